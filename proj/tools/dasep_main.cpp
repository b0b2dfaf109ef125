#include "dasep/cli.hpp"

int main(int argc, char** argv) { return dasep::cli::run(argc, argv); }
