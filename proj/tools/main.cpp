#include "tconj/cli.hpp"

int main(int argc, char** argv) { return tconj::cli_main(argc, argv); }
