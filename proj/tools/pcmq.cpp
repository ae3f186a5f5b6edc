#include "pcmq_cli.hpp"

int main(int argc, char** argv) { return pcmq::cli::run(argc, argv); }
