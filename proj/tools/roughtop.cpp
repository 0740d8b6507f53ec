// Placeholder entry point; the full command surface lands with the CLI module.
int main() { return 2; }
