#pragma once

#include "orientsign/core.hpp"
#include "orientsign/permutation.hpp"
#include "orientsign/topology.hpp"
#include "orientsign/pin.hpp"
#include "orientsign/autsign.hpp"
#include "orientsign/divisor.hpp"
#include "orientsign/derivation.hpp"
#include "orientsign/moduli.hpp"
#include "orientsign/json_io.hpp"
#include "orientsign/scenario.hpp"
