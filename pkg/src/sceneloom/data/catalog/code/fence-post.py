"""Fence Post generator (Outdoors)."""

PARAMS = {
    "size": 0.482,
    "detail": 5,
    "roughness": 0.478,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Fence Post"
    for key, value in params.items():
        node[key] = value
    return node
