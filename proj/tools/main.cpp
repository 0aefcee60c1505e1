#include "cli.hpp"

int main(int argc, char** argv) { return avgcase_cli::main_entry(argc, argv); }
