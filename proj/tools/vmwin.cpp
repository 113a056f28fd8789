#include "cli.hpp"

int main(int argc, char** argv) { return vmwin::cli::run(argc, argv); }
