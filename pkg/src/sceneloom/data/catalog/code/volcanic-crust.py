"""Volcanic Crust generator (Terrain)."""

PARAMS = {
    "size": 1.282,
    "detail": 1,
    "roughness": 0.253,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Volcanic Crust"
    for key, value in params.items():
        node[key] = value
    return node
