/**
 * Frozen session-service responses used as test oracles.
 *
 * Captured verbatim from the running service for the two-slot
 * transfer net (ne2) and the dynamic place-creation net (dispatch):
 * initial state, the first firings, and their events.
 */

import type { ConfigJson, EventJson, NetJson, StepJson } from '../src/types.js';

export const dispatchConfig0: ConfigJson = {
  "gamma": {},
  "marking": {
    "S1": [
      [
        "R1",
        "D1"
      ],
      [
        "R2",
        "D2"
      ]
    ]
  },
  "places": [
    "S1"
  ]
};

export const dispatchConfig1: ConfigJson = {
  "gamma": {
    "R": [
      "R1"
    ]
  },
  "marking": {
    "R1": [
      [
        "D1"
      ]
    ],
    "S1": [
      [
        "R2",
        "D2"
      ]
    ]
  },
  "places": [
    "R1",
    "S1"
  ]
};

export const dispatchEnabled0: StepJson[] = [
  {
    "binding": {
      "D": "D1",
      "R": "R1"
    },
    "transition": "t1"
  },
  {
    "binding": {
      "D": "D2",
      "R": "R2"
    },
    "transition": "t1"
  }
];

export const dispatchEnabled1: StepJson[] = [
  {
    "binding": {
      "D": "D2",
      "R": "R2"
    },
    "transition": "t1"
  }
];

export const dispatchEvent1: EventJson = {
  "binding": {
    "D": "D1",
    "R": "R1"
  },
  "consumed": {
    "S1": [
      [
        "R1",
        "D1"
      ]
    ]
  },
  "gammaOps": [
    {
      "constant": "R1",
      "direction": "+",
      "variable": "R"
    }
  ],
  "newPlaces": [
    "R1"
  ],
  "produced": {
    "R1": [
      [
        "D1"
      ]
    ]
  },
  "solidArcs": [
    {
      "from": "t1",
      "to": "R1"
    }
  ],
  "transition": "t1"
};

export const dispatchNet: NetJson = {
  "arcs": [
    {
      "from": "S1",
      "to": "t1",
      "virtual": false,
      "weight": "(R,D)"
    },
    {
      "from": "t1",
      "to": "R",
      "virtual": true,
      "weight": "D"
    }
  ],
  "constants": {
    "D1": 1,
    "D2": 1,
    "R1": 1,
    "R2": 1,
    "S1": 2,
    "eps": 1
  },
  "gamma": {},
  "marking": {
    "S1": [
      [
        "R1",
        "D1"
      ],
      [
        "R2",
        "D2"
      ]
    ]
  },
  "name": "Dispatch",
  "places": [
    "S1"
  ],
  "transitions": [
    {
      "guard": "R == R1 || R == R2",
      "link": [
        {
          "condition": "true",
          "direction": "+",
          "variable": "R"
        }
      ],
      "name": "t1"
    }
  ],
  "variables": [
    "D",
    "R"
  ]
};

export const ne2Config0: ConfigJson = {
  "gamma": {},
  "marking": {
    "De": [],
    "I_AB": [],
    "In": [
      [
        "I_AB"
      ]
    ],
    "St1": [
      [
        "f1"
      ],
      [
        "f2"
      ]
    ],
    "St2": []
  },
  "places": [
    "De",
    "I_AB",
    "In",
    "St1",
    "St2"
  ]
};

export const ne2Config1: ConfigJson = {
  "gamma": {
    "I": [
      "I_AB"
    ]
  },
  "marking": {
    "De": [
      [
        "I_AB"
      ]
    ],
    "I_AB": [],
    "In": [],
    "St1": [
      [
        "f1"
      ],
      [
        "f2"
      ]
    ],
    "St2": []
  },
  "places": [
    "De",
    "I_AB",
    "In",
    "St1",
    "St2"
  ]
};

export const ne2Config2: ConfigJson = {
  "gamma": {
    "I": [
      "I_AB"
    ]
  },
  "marking": {
    "De": [
      [
        "I_AB"
      ]
    ],
    "I_AB": [
      [
        "f1"
      ]
    ],
    "In": [],
    "St1": [
      [
        "f2"
      ]
    ],
    "St2": []
  },
  "places": [
    "De",
    "I_AB",
    "In",
    "St1",
    "St2"
  ]
};

export const ne2Enabled0: StepJson[] = [
  {
    "binding": {
      "D": "f1"
    },
    "transition": "t1"
  },
  {
    "binding": {
      "D": "f2"
    },
    "transition": "t1"
  },
  {
    "binding": {
      "I": "I_AB"
    },
    "transition": "t2"
  }
];

export const ne2Enabled1: StepJson[] = [
  {
    "binding": {
      "D": "f1"
    },
    "transition": "t1"
  },
  {
    "binding": {
      "D": "f2"
    },
    "transition": "t1"
  },
  {
    "binding": {
      "I": "I_AB"
    },
    "transition": "t4"
  }
];

export const ne2Enabled2: StepJson[] = [
  {
    "binding": {
      "D": "f2"
    },
    "transition": "t1"
  },
  {
    "binding": {
      "D": "f1",
      "I": "I_AB"
    },
    "transition": "t3"
  },
  {
    "binding": {
      "I": "I_AB"
    },
    "transition": "t4"
  }
];

export const ne2Event1: EventJson = {
  "binding": {
    "I": "I_AB"
  },
  "consumed": {
    "In": [
      [
        "I_AB"
      ]
    ]
  },
  "gammaOps": [
    {
      "constant": "I_AB",
      "direction": "+",
      "variable": "I"
    }
  ],
  "newPlaces": [],
  "produced": {
    "De": [
      [
        "I_AB"
      ]
    ]
  },
  "solidArcs": [
    {
      "from": "t2",
      "to": "I_AB"
    }
  ],
  "transition": "t2"
};

export const ne2Event2: EventJson = {
  "binding": {
    "D": "f1"
  },
  "consumed": {
    "St1": [
      [
        "f1"
      ]
    ]
  },
  "gammaOps": [],
  "newPlaces": [],
  "produced": {
    "I_AB": [
      [
        "f1"
      ]
    ]
  },
  "solidArcs": [],
  "transition": "t1"
};

export const ne2Net: NetJson = {
  "arcs": [
    {
      "from": "De",
      "to": "t4",
      "virtual": false,
      "weight": "I"
    },
    {
      "from": "I",
      "to": "t3",
      "virtual": true,
      "weight": "D"
    },
    {
      "from": "In",
      "to": "t2",
      "virtual": false,
      "weight": "I"
    },
    {
      "from": "St1",
      "to": "t1",
      "virtual": false,
      "weight": "D"
    },
    {
      "from": "t1",
      "to": "I_AB",
      "virtual": false,
      "weight": "D"
    },
    {
      "from": "t2",
      "to": "De",
      "virtual": false,
      "weight": "I"
    },
    {
      "from": "t2",
      "to": "I",
      "virtual": true,
      "weight": "empty"
    },
    {
      "from": "t3",
      "to": "St2",
      "virtual": false,
      "weight": "D"
    },
    {
      "from": "t4",
      "to": "I",
      "virtual": true,
      "weight": "empty"
    }
  ],
  "constants": {
    "De": 1,
    "I_AB": 1,
    "In": 1,
    "St1": 1,
    "St2": 1,
    "eps": 1,
    "f1": 1,
    "f2": 1
  },
  "gamma": {},
  "marking": {
    "In": [
      [
        "I_AB"
      ]
    ],
    "St1": [
      [
        "f1"
      ],
      [
        "f2"
      ]
    ]
  },
  "name": "Ne2",
  "places": [
    "De",
    "I_AB",
    "In",
    "St1",
    "St2"
  ],
  "transitions": [
    {
      "guard": "true",
      "link": [],
      "name": "t1"
    },
    {
      "guard": "true",
      "link": [
        {
          "condition": "true",
          "direction": "+",
          "variable": "I"
        }
      ],
      "name": "t2"
    },
    {
      "guard": "true",
      "link": [],
      "name": "t3"
    },
    {
      "guard": "true",
      "link": [
        {
          "condition": "true",
          "direction": "-",
          "variable": "I"
        }
      ],
      "name": "t4"
    }
  ],
  "variables": [
    "D",
    "I"
  ]
};
