#include <iostream>

#include "qres/verify.hpp"

int main(int argc, char** argv)
{
    return qres::cli::main_entry(argc, argv, std::cout, std::cerr);
}
