#include "squarewell/cli.hpp"

int main(int argc, char** argv) {
    return squarewell::cli_main(argc, argv);
}
