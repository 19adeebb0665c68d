#include "bnet/cli.hpp"

#include <iostream>

int main( int argc, char** argv )
{
    return bnet::run_cli( { argv, argv + argc }, std::cout, std::cerr );
}
