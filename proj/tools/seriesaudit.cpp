#include "seriesaudit/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return seriesaudit::run(args, std::cout, std::cerr);
}
