#pragma once

#include "bitchrom/differential.hpp"
#include "bitchrom/error.hpp"
#include "bitchrom/ga.hpp"
#include "bitchrom/layout.hpp"
#include "bitchrom/memory_report.hpp"
#include "bitchrom/naive_chromosome.hpp"
#include "bitchrom/packed_chromosome.hpp"
#include "bitchrom/schema.hpp"
