#include "thermal_jcm/cli.hpp"

int main(int argc, char** argv) {
  return tjcm::cli::run(argc, argv);
}
