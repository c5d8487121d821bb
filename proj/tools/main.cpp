#include <iostream>
#include <string>
#include <vector>

#include "wordtrie/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return wordtrie::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cin,
                             std::cout, std::cerr);
}
