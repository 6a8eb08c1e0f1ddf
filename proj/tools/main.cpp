#include <iostream>

#include "cli.hpp"

#ifndef FCMERGE_CORPUS_DIR
#define FCMERGE_CORPUS_DIR ""
#endif

int main(int argc, char** argv) {
    return fcmerge::cli::run(argc, argv, std::cout, std::cerr, FCMERGE_CORPUS_DIR);
}
