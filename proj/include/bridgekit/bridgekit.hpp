#pragma once

#include "bridgekit/batch.hpp"
#include "bridgekit/certificate_json.hpp"
#include "bridgekit/coloring.hpp"
#include "bridgekit/diagram.hpp"
#include "bridgekit/error.hpp"
#include "bridgekit/knot_table.hpp"
#include "bridgekit/passes.hpp"
#include "bridgekit/sum_decomp.hpp"
#include "bridgekit/wirtinger.hpp"
