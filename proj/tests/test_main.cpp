#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "momenta/real.hpp"

int main(int argc, char** argv) {
    momenta::set_real_precision_bits(256);
    return doctest::Context(argc, argv).run();
}
