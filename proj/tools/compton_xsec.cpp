#include "compton/cli.hpp"

int main(int argc, char** argv) {
    return compton::cli::run(argc, argv);
}
