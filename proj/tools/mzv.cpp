#include <mzv/cli.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    return mzv::cli::run(argc, argv, std::cout, std::cerr);
}
