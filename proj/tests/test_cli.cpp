// placeholder: replaced once the CLI exists
int main() { return 0; }
