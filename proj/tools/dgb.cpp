#include <dgb/cli.hpp>

int main(int argc, char **argv)
{
    return dgb::cli::run(argc, argv);
}
