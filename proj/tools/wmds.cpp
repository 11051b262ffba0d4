#include "wmds/cli.hpp"

int main(int argc, char** argv) { return wmds::main_entry(argc, argv); }
