"""Desert Sand 06 Material generator (Materials)."""

PARAMS = {
    "size": 0.925,
    "detail": 2,
    "roughness": 0.227,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Desert Sand 06 Material"
    for key, value in params.items():
        node[key] = value
    return node
