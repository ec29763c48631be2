#include "resovar/cli.hpp"

int main(int argc, char** argv) { return resovar::main_entry(argc, argv); }
