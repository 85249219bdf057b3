"""Chandelier generator (Indoors)."""

PARAMS = {
    "size": 0.719,
    "detail": 3,
    "roughness": 0.187,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Chandelier"
    for key, value in params.items():
        node[key] = value
    return node
