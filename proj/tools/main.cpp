#include "l2boost/cli.hpp"

int main(int argc, char** argv) { return l2boost::run_cli(argc, argv); }
