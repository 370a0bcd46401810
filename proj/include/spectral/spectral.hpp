#pragma once

// Umbrella header: real-valued block codes from the real eigenspaces of the
// discrete Fourier and Hartley transforms, their lattice packing parameters,
// and the tooling that diffs them against the bundled reference tables.

#include "spectral/errors.hpp"
#include "spectral/matrix.hpp"
#include "spectral/linalg.hpp"
#include "spectral/transforms.hpp"
#include "spectral/eigencode.hpp"
#include "spectral/lattice.hpp"
#include "spectral/format.hpp"
#include "spectral/json_io.hpp"
#include "spectral/fixtures.hpp"
#include "spectral/reproduce.hpp"
