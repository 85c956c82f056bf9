#include "ifscheck/cli.hpp"

int main(int argc, char** argv) { return ifscheck::cli_main(argc, argv); }
