#pragma once

// Umbrella header: the whole toolkit.

#include "flagreg/face.hpp"
#include "flagreg/graph.hpp"
#include "flagreg/complex.hpp"
#include "flagreg/field.hpp"
#include "flagreg/sparse.hpp"
#include "flagreg/homology.hpp"
#include "flagreg/betti.hpp"
#include "flagreg/structure.hpp"
#include "flagreg/bounds.hpp"
#include "flagreg/catalog.hpp"
#include "flagreg/facet_file.hpp"
#include "flagreg/analyze.hpp"
#include "flagreg/acceptance.hpp"
