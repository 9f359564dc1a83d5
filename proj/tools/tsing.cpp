#include "tsing/cli.hpp"

int main(int argc, char** argv) { return tsing::cli::run(argc, argv); }
