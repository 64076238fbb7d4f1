#include <recnum/cli.hpp>
#include <recnum/corpus_data.hpp>

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return recnum::cli::run(args, std::cout, std::cerr, std::string(recnum::embedded_corpus));
}
