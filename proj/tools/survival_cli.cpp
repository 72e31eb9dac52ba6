#include "survival/io.hpp"

int main(int argc, char** argv) { return survival::run_cli(argc, argv); }
