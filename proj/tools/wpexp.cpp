#include "wp/cli.hpp"

int main(int argc, char** argv) { return wp::cli_main(argc, argv); }
