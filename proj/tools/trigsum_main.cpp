#include "trigsum/cli.hpp"

int main(int argc, char** argv) { return trigsum::cli::run(argc, argv); }
