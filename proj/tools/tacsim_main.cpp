// Placeholder main; subcommands land with the harness.
#include <iostream>

int main() {
  std::cout << "tacsim: no subcommand\n";
  return 1;
}
