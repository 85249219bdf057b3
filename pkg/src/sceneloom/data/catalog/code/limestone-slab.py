"""Limestone Slab generator (Rocks)."""

PARAMS = {
    "size": 0.72,
    "detail": 5,
    "roughness": 0.871,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Limestone Slab"
    for key, value in params.items():
        node[key] = value
    return node
