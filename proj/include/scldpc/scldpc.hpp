#ifndef SCLDPC_SCLDPC_HPP
#define SCLDPC_SCLDPC_HPP

#include "channel.hpp"
#include "cycles.hpp"
#include "decoder.hpp"
#include "density_evolution.hpp"
#include "errors.hpp"
#include "manifest.hpp"
#include "peg.hpp"
#include "protograph.hpp"
#include "qc.hpp"
#include "rng.hpp"
#include "simulate.hpp"
#include "sparse.hpp"

#endif
