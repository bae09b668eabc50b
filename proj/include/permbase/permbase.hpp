#pragma once

#include "permbase/actions.hpp"
#include "permbase/brsc.hpp"
#include "permbase/errors.hpp"
#include "permbase/explorer.hpp"
#include "permbase/galois.hpp"
#include "permbase/group.hpp"
#include "permbase/io.hpp"
#include "permbase/moore.hpp"
#include "permbase/permutation.hpp"
#include "permbase/point_set.hpp"
#include "permbase/stabilizer_chain.hpp"
