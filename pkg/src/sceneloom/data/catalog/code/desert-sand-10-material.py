"""Desert Sand 10 Material generator (Materials)."""

PARAMS = {
    "size": 1.513,
    "detail": 2,
    "roughness": 0.957,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Desert Sand 10 Material"
    for key, value in params.items():
        node[key] = value
    return node
