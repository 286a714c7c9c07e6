#include "zetacan/cli.hpp"

int main(int argc, char** argv)
{
    return zetacan::cli::run(argc, argv);
}
