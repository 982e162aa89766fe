#include "ntlab/cli.hpp"

int main(int argc, char** argv) { return ntlab::cli::run(argc, argv); }
