"""Velvet Cloth 04 Material generator (Materials)."""

PARAMS = {
    "size": 0.995,
    "detail": 2,
    "roughness": 0.67,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Velvet Cloth 04 Material"
    for key, value in params.items():
        node[key] = value
    return node
