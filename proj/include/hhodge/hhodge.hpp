#pragma once

#include <hhodge/checks.hpp>
#include <hhodge/cyclotomic.hpp>
#include <hhodge/errors.hpp>
#include <hhodge/groups.hpp>
#include <hhodge/hkernel.hpp>
#include <hhodge/linalg.hpp>
#include <hhodge/potentials.hpp>
#include <hhodge/rational.hpp>
#include <hhodge/ratseries.hpp>
#include <hhodge/roots.hpp>
#include <hhodge/serialize.hpp>
#include <hhodge/series.hpp>
#include <hhodge/solvers.hpp>
#include <hhodge/wdvv.hpp>
