#include "fxt/cli.hpp"

int main(int argc, char** argv) { return fxt::run_cli(argc, argv); }
