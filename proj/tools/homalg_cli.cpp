// Placeholder main; the real CLI lands with the report module.
int main() { return 0; }
