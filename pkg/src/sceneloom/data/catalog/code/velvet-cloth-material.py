"""Velvet Cloth Material generator (Materials)."""

PARAMS = {
    "size": 1.717,
    "detail": 5,
    "roughness": 0.78,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Velvet Cloth Material"
    for key, value in params.items():
        node[key] = value
    return node
