#include "sk/cli.hpp"
namespace sk::cli {
int run(int, const char* const*) { return 0; }
}  // namespace sk::cli
