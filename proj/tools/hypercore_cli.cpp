// placeholder, replaced after the library stabilizes
int main() { return 0; }
