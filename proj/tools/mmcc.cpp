#include "mmcc/io.hpp"

int main(int argc, char** argv) { return mmcc::run_cli(argc, argv); }
