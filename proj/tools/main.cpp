#include "sk/cli.hpp"

int main(int argc, char** argv) { return sk::cli::run(argc, argv); }
