// placeholder: replaced by the acceptance harness
int main() { return 0; }
