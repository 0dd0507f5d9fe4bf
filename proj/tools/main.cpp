#include "nlc/cli.hpp"

int main(int argc, char** argv) { return nlc::run_command(argc, argv); }
