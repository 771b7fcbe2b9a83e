#ifndef SCT_SCT_HPP
#define SCT_SCT_HPP

#include "sct/bitset.hpp"
#include "sct/canonical_balls.hpp"
#include "sct/complex.hpp"
#include "sct/errors.hpp"
#include "sct/experiment.hpp"
#include "sct/generators.hpp"
#include "sct/io.hpp"
#include "sct/isomorphism.hpp"
#include "sct/topology.hpp"
#include "sct/transversal.hpp"

#endif // SCT_SCT_HPP
