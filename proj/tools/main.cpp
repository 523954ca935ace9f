#include "gaussq/cli.hpp"

int main(int argc, char** argv) { return gaussq::run_cli(argc, argv); }
