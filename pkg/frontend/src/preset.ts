/**
 * Bundled preset: the five-expert energy policy selection example
 * shipped with the service (it recognizes this exact input and attaches
 * its transcription-slip annotation).
 */

import type { DecisionProblem } from './types.js';

export const PAPER_PRESET: DecisionProblem = {
  "aggregator": {
    "name": "ndimWeightedAverage"
  },
  "alternatives": [
    "a_1",
    "a_2",
    "a_3",
    "a_4",
    "a_5"
  ],
  "criteria": [
    "C_1",
    "C_2",
    "C_3",
    "C_4"
  ],
  "evaluations": [
    [
      [
        0.4,
        0.7,
        0.2,
        0.3
      ],
      [
        0.5,
        0.9,
        0.1,
        0.4
      ],
      [
        0.6,
        0.6,
        0.5,
        0.4
      ],
      [
        0.8,
        0.7,
        0.8,
        0.6
      ],
      [
        0.6,
        0.4,
        0.7,
        0.7
      ]
    ],
    [
      [
        0.5,
        0.7,
        0.5,
        0.5
      ],
      [
        0.5,
        0.5,
        0.1,
        0.4
      ],
      [
        0.7,
        0.6,
        0.3,
        0.6
      ],
      [
        0.7,
        0.2,
        0.8,
        0.8
      ],
      [
        0.9,
        0.6,
        0.8,
        0.3
      ]
    ],
    [
      [
        0.4,
        0.8,
        0.2,
        0.9
      ],
      [
        0.3,
        0.7,
        0.6,
        0.7
      ],
      [
        0.7,
        0.6,
        0.5,
        0.4
      ],
      [
        0.4,
        0.4,
        0.1,
        0.8
      ],
      [
        0.1,
        0.6,
        0.7,
        0.6
      ]
    ],
    [
      [
        0.3,
        0.9,
        0.4,
        0.3
      ],
      [
        0.3,
        0.2,
        0.8,
        0.3
      ],
      [
        0.7,
        0.9,
        0.3,
        0.6
      ],
      [
        0.8,
        0.4,
        0.8,
        0.9
      ],
      [
        0.3,
        0.8,
        0.9,
        0.9
      ]
    ],
    [
      [
        0.5,
        0.1,
        0.5,
        0.6
      ],
      [
        0.3,
        0.6,
        0.5,
        0.7
      ],
      [
        0.6,
        0.6,
        0.7,
        0.6
      ],
      [
        0.3,
        0.7,
        0.1,
        0.6
      ],
      [
        0.7,
        0.7,
        0.8,
        0.6
      ]
    ]
  ],
  "experts": [
    "e_1",
    "e_2",
    "e_3",
    "e_4",
    "e_5"
  ],
  "order": {
    "kind": "LexTau",
    "tau": [
      3,
      2,
      4,
      1,
      5
    ]
  },
  "weights": [
    0.2341,
    0.2474,
    0.3181,
    0.2004
  ]
} as DecisionProblem;
