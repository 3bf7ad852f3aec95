#include <gtest/gtest.h>
#include "railknot/moves.hpp"
#include "railknot/io.hpp"
#include "railknot/invariants.hpp"

TEST(Placeholder, Pending) { SUCCEED(); }
