#include "railknot/rational.hpp"
int main() { return 0; }
