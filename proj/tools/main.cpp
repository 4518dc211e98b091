#include "fuscat/cli.hpp"

int main(int argc, char** argv) { return fuscat::run_cli(argc, argv); }
