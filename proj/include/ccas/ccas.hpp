#pragma once

#include "ccas/binomial.hpp"
#include "ccas/counting.hpp"
#include "ccas/errors.hpp"
#include "ccas/extract.hpp"
#include "ccas/fw.hpp"
#include "ccas/graph.hpp"
#include "ccas/sct.hpp"
