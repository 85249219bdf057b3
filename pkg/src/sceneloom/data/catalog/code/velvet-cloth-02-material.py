"""Velvet Cloth 02 Material generator (Materials)."""

PARAMS = {
    "size": 0.491,
    "detail": 5,
    "roughness": 0.353,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Velvet Cloth 02 Material"
    for key, value in params.items():
        node[key] = value
    return node
