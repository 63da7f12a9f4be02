#pragma once

#include "audit.hpp"
#include "axioms.hpp"
#include "core.hpp"
#include "enumerate.hpp"
#include "io.hpp"
#include "substructures.hpp"
#include "transforms.hpp"
