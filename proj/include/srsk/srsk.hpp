#pragma once

// Convenience umbrella header.

#include "srsk/alphabet.hpp"
#include "srsk/biword.hpp"
#include "srsk/bump_geometry.hpp"
#include "srsk/classical_rsk.hpp"
#include "srsk/enumerate.hpp"
#include "srsk/insertion.hpp"
#include "srsk/io.hpp"
#include "srsk/node.hpp"
#include "srsk/rsk.hpp"
#include "srsk/shape.hpp"
#include "srsk/tableau.hpp"
#include "srsk/verify.hpp"
