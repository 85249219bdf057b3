"""Fire Hydrant generator (Outdoors)."""

PARAMS = {
    "size": 1.362,
    "detail": 1,
    "roughness": 0.453,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Fire Hydrant"
    for key, value in params.items():
        node[key] = value
    return node
