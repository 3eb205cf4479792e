#include "ellab/cli.hpp"

int main(int argc, char** argv) {
    return ellab::run_cli(argc, argv);
}
