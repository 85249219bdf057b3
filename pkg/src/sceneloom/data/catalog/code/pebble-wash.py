"""Pebble Wash generator (Scattering)."""

PARAMS = {
    "size": 1.662,
    "detail": 3,
    "roughness": 0.315,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Pebble Wash"
    for key, value in params.items():
        node[key] = value
    return node
