#include "uarnc/cli.hpp"

int main(int argc, char** argv) { return uarnc::run_command(argc, argv); }
