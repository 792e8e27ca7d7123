#include "bclass/cli.hpp"

int main(int argc, char** argv) { return bclass::cli_main(argc, argv); }
