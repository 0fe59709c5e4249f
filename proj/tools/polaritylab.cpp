#include "polaritylab/cli.hpp"

int main(int argc, char** argv) { return polaritylab::cli::run(argc, argv); }
