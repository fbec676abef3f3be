#include "sturmian/cli.hpp"

int main(int argc, char** argv) { return sturmian::cli::run(argc, argv); }
