#pragma once

#include "nclandau/error.hpp"
#include "nclandau/representations.hpp"
#include "nclandau/hamiltonian.hpp"
#include "nclandau/spectra.hpp"
#include "nclandau/fock_oracle.hpp"
#include "nclandau/scenario.hpp"
#include "nclandau/sweep.hpp"
#include "nclandau/audit.hpp"
#include "nclandau/commands.hpp"
