#include "vinlab/cli.hpp"

int main(int argc, char** argv) { return vinlab::cli_main(argc, argv); }
