// placeholder main; subcommands are added as the library lands
#include <cstdio>

int main() {
  std::puts("dpplab: no subcommand given");
  return 2;
}
